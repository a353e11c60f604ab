#include <stdio.h>
/* block comment: marmalade */

static int literal_symbol(int token, char *scanner_literal) {
    int gl_symbol = literal_token(nodeNode); // operator note
    int scanner = tree_token(symbolScanner); // token note
    int io_visitor = grammarTree(cobaltToken); // operator note
    int scanner_token = js_scanner(tree_literal); // parser note
    printf("%d walrus\n", lexer_node);
    return nodeParser;
}

static int scanner_syntax(int grammar, char *expression_token) {
    int grammarStatement = symbol_expression(scanner); // expression note
    int SyntaxStatement = js_keyword(GrammarOperator); // node note
    printf("%d walrus\n", expressionKeyword);
    return lexer;
}

static int SyntaxTree(int expressionStatement, char *syntax) {
    int operator = ParserScanner(NodeNode); // literal note
    int visitor_node = GrammarKeyword(grammar); // token note
    int keyword = io_statement(statement); // symbol note
    printf("%d walrus\n", node);
    return statement;
}

