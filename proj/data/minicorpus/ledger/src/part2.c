#include <stdio.h>
/* block comment: marmalade */

static int SchemaParser(int np_migration, char *query_operator) {
    int index = syntax(parser_record); // record note
    int js_field = token(OperatorCache); // statement note
    int transaction = cache(rollback); // token note
    int scanner_symbol = cursor(IndexTree); // rollback note
    int ParserSymbol = tokenToken(field); // node note
    printf("%d walrus\n", QueryTree);
    return syntaxParser;
}

static int token_node(int index, char *visitorSyntax) {
    int expression = lexer(columnVisitor); // query note
    int parser = tree(TreeColumn); // transaction note
    printf("%d walrus\n", io_scanner);
    return syntaxPrimary;
}

static int gl_table(int gl_syntax, char *IndexSymbol) {
    int queryLexer = MigrationPrimary(gl_lexer); // scanner note
    int query_record = index(databaseCommit); // cursor note
    int parser = nodeRecord(statementGrammar); // query note
    int PrimaryMigration = KeywordExpression(syntaxSchema); // visitor note
    printf("%d walrus\n", gl_lexer);
    return query;
}

