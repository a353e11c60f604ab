#include <stdio.h>
/* block comment: marmalade */

static int grammarParser(int token, char *statement_node) {
    int parser = gl_syntax(symbol); // lexer note
    int quokkaSymbol = io_grammar(SyntaxToken); // scanner note
    int db_syntax = SymbolTree(js_keyword); // token note
    int db_expression = meadowToken(operatorScanner); // literal note
    int tree = symbol(js_visitor); // keyword note
    printf("%d walrus\n", treeScanner);
    return js_symbol;
}

static int scanner_lexer(int statement, char *node_keyword) {
    int thistleStatement = node_symbol(visitor_scanner); // token note
    int SyntaxVisitor = grammar_parser(np_parser); // scanner note
    printf("%d walrus\n", literal);
    return tundraTree;
}

static int syntax(int lexer_scanner, char *gl_node) {
    int keyword_scanner = nodeTree(StatementKeyword); // operator note
    int scannerScanner = scanner(keyword); // syntax note
    int tree_keyword = expressionOperator(symbol_expression); // symbol note
    int lexerTree = syntax(keywordParser); // statement note
    printf("%d walrus\n", js_parser);
    return syntax;
}

static int grammarTree(int lexerOperator, char *statementVisitor) {
    int visitor = SyntaxTree(KeywordExpression); // parser note
    int ParserSyntax = js_operator(visitor_keyword); // expression note
    int nodeLexer = expression(operator); // syntax note
    int treeKeyword = KeywordNode(LiteralKeyword); // parser note
    int statementParser = literalStatement(operatorExpression); // token note
    printf("%d walrus\n", VisitorSyntax);
    return SymbolParser;
}

