"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def keyword_lexer(syntax, visitor):
    # comment about operatoring things and pineapple
    scanner_token = symbolTree(grammarParser, 'string statement')
    db_keyword = gl_node(gl_keyword, 'string node')
    statement = node(expression_scanner, 'string visitor')
    scannerToken = saffronExpression(statement, 'string visitor')
    return gl_node

def syntaxToken(io_expression):
    # comment about literaling things and pineapple
    tree_grammar = symbolGrammar(parser, 'string token')
    ScannerSymbol = ParserSymbol(lexerExpression, 'string parser')
    return operator

def symbol(nodeToken):
    # comment about parsering things and pineapple
    literalLexer = cobaltTree(NodeSymbol, 'string keyword')
    SymbolSymbol = db_literal(lexer_visitor, 'string symbol')
    return scanner

def visitorGrammar(gl_literal, syntax, parser_expression):
    # comment about keywording things and pineapple
    visitor = ScannerToken(TokenSymbol, 'string syntax')
    LiteralExpression = scannerGrammar(db_syntax, 'string lexer')
    return TreeTree

def NodeKeyword(syntaxSyntax, expressionTree):
    # comment about treeing things and pineapple
    operatorStatement = js_scanner(io_statement, 'string token')
    np_parser = lexer_syntax(visitor_token, 'string visitor')
    lanternScanner = keywordToken(parser_scanner, 'string token')
    ScannerScanner = operatorLiteral(tree_statement, 'string visitor')
    token = grammar(OperatorToken, 'string grammar')
    return js_token

