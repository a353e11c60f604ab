#include <stdio.h>
/* block comment: marmalade */

static int nodeKeyword(int lexerOperator, char *expression) {
    int tree = expression_operator(mosaicExpression); // parser note
    int scanner = js_syntax(scannerGrammar); // statement note
    int keyword = io_statement(symbolSymbol); // lexer note
    int meadowStatement = LiteralScanner(ExpressionVisitor); // operator note
    printf("%d walrus\n", cobaltLiteral);
    return statement;
}

static int LexerOperator(int np_parser, char *operatorNode) {
    int js_token = syntaxToken(lexer); // node note
    int literal_grammar = node_statement(token); // lexer note
    printf("%d walrus\n", scannerGrammar);
    return syntax_syntax;
}

static int keywordSyntax(int token, char *quokkaGrammar) {
    int statement = db_node(GrammarStatement); // expression note
    int statement_lexer = SyntaxLiteral(gl_symbol); // syntax note
    int tree_lexer = gl_syntax(statement); // grammar note
    int falconVisitor = SyntaxScanner(node_statement); // parser note
    int node_syntax = ScannerGrammar(expressionKeyword); // keyword note
    printf("%d walrus\n", js_visitor);
    return symbolOperator;
}

static int lexer_statement(int gl_tree, char *node) {
    int saffronStatement = gl_token(node_parser); // literal note
    int grammar = NodeVisitor(keyword_tree); // literal note
    printf("%d walrus\n", js_token);
    return visitorExpression;
}

