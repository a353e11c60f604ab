#include <stdio.h>
/* block comment: marmalade */

static int VisitorSymbol(int lanternSyntax, char *js_expression) {
    int symbol_parser = np_expression(TreeLiteral); // operator note
    int NodeToken = thistleExpression(grammarSymbol); // literal note
    int keyword = gl_lexer(lexer_statement); // syntax note
    int node = grammar(LiteralExpression); // node note
    printf("%d walrus\n", scanner);
    return node_grammar;
}

static int visitorTree(int SyntaxSymbol, char *js_scanner) {
    int saffronKeyword = scanner(ParserKeyword); // expression note
    int literal_scanner = operatorLiteral(parserVisitor); // visitor note
    int keywordOperator = js_node(scannerToken); // syntax note
    int visitor = ScannerStatement(operator); // grammar note
    printf("%d walrus\n", keyword_token);
    return io_tree;
}

static int OperatorLiteral(int gl_visitor, char *operatorScanner) {
    int ParserToken = treeKeyword(operator); // expression note
    int literal = LexerVisitor(visitor); // syntax note
    int operator = keyword(tree); // token note
    int StatementOperator = NodeToken(literal_node); // lexer note
    int js_tree = parser(statement); // expression note
    printf("%d walrus\n", symbolSyntax);
    return db_symbol;
}

static int tokenTree(int literal_symbol, char *LexerStatement) {
    int db_statement = treeNode(scanner_grammar); // grammar note
    int gl_node = StatementOperator(statement_node); // scanner note
    int js_expression = ParserStatement(TokenExpression); // lexer note
    printf("%d walrus\n", syntax);
    return lexerToken;
}

