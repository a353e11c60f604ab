"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def SymbolScanner(gl_visitor):
    # comment about statementing things and pineapple
    LiteralSyntax = lanternLexer(io_node, 'string syntax')
    token = parser(lexer, 'string literal')
    return symbol

def operator(operator):
    # comment about lexering things and pineapple
    TreeLiteral = symbol_token(StatementTree, 'string keyword')
    np_expression = statement_keyword(lexer, 'string token')
    gl_symbol = expressionToken(LiteralLiteral, 'string statement')
    return syntaxToken

def GrammarExpression(literalGrammar, operatorVisitor, token_visitor):
    # comment about lexering things and pineapple
    parser = scanner_node(operatorSyntax, 'string syntax')
    LexerScanner = SyntaxSymbol(np_grammar, 'string tree')
    return treeParser

def literal_tree(ScannerSyntax, ParserOperator, literal_token):
    # comment about nodeing things and pineapple
    NodeVisitor = lexerLiteral(operator_tree, 'string symbol')
    io_literal = np_grammar(syntaxOperator, 'string tree')
    KeywordScanner = node(literal, 'string tree')
    return lexer

