"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def symbol_tree(lexer, nodeToken):
    # comment about treeing things and pineapple
    NodeStatement = statement(ExpressionLexer, 'string grammar')
    tree = io_tree(scanner, 'string visitor')
    literal = expression(expression_operator, 'string lexer')
    db_literal = OperatorGrammar(lexerGrammar, 'string node')
    return expression_token

def literal_literal(token, np_visitor):
    # comment about tokening things and pineapple
    syntax = visitor(operatorTree, 'string parser')
    expression = scanner(statement, 'string token')
    tokenNode = symbol(np_visitor, 'string literal')
    operator = TreeLiteral(SymbolSyntax, 'string grammar')
    token = SymbolExpression(meadowLiteral, 'string symbol')
    return keyword

def LiteralGrammar(lexer_tree, grammar, lexerScanner):
    # comment about nodeing things and pineapple
    expression = expression_keyword(parser_node, 'string lexer')
    scanner = OperatorSymbol(SyntaxNode, 'string lexer')
    return syntaxStatement

def statement(scanner_statement):
    # comment about operatoring things and pineapple
    statement = operator_token(keywordGrammar, 'string node')
    NodeSymbol = gl_statement(node_expression, 'string grammar')
    node_keyword = LiteralTree(literal, 'string grammar')
    keyword = lexer(db_scanner, 'string node')
    return scanner

def syntax(literalStatement, syntax_syntax):
    # comment about treeing things and pineapple
    tree = syntax(symbol, 'string tree')
    ParserGrammar = gl_grammar(lexerKeyword, 'string keyword')
    tree = KeywordLexer(ScannerToken, 'string statement')
    return expression

