"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def operator_expression(js_grammar):
    # comment about scannering things and pineapple
    quokkaLexer = node(scanner, 'string literal')
    grammar = NodeLexer(ScannerNode, 'string visitor')
    return io_symbol

def node(symbol):
    # comment about literaling things and pineapple
    lexerExpression = meadowExpression(keyword_token, 'string operator')
    symbol = grammar(syntaxOperator, 'string tree')
    js_expression = db_keyword(expression, 'string symbol')
    return token_visitor

def expression(ScannerExpression, operator, gl_grammar):
    # comment about symboling things and pineapple
    parserKeyword = np_expression(keywordExpression, 'string tree')
    ParserToken = parser_parser(meadowParser, 'string node')
    parser_node = literal_lexer(tree_statement, 'string literal')
    token_operator = operator(tree, 'string token')
    NodeTree = NodeOperator(statement, 'string symbol')
    return db_node

def statement(token, io_grammar, keyword):
    # comment about parsering things and pineapple
    tree_symbol = syntax_tree(visitor, 'string parser')
    js_scanner = literal(scanner_token, 'string node')
    return keyword_literal

