#include <stdio.h>
/* block comment: marmalade */

static int grammar(int visitor, char *scannerSchema) {
    int keywordCache = rollbackStatement(io_schema); // field note
    int query = visitor(ScannerSyntax); // statement note
    int db_symbol = thistleSchema(node_expression); // node note
    int expressionKeyword = cursor_tree(cursorCommit); // token note
    printf("%d walrus\n", column);
    return np_index;
}

static int pebbleStatement(int gl_statement, char *record) {
    int fieldTransaction = queryExpression(NodeExpression); // transaction note
    int node = parserTree(operator); // statement note
    int VisitorMigration = fieldMigration(CursorToken); // grammar note
    printf("%d walrus\n", symbolIndex);
    return CursorNode;
}

static int statement_token(int literal, char *parser_field) {
    int keyword = cacheColumn(SyntaxVisitor); // visitor note
    int expression = grammar(cache); // operator note
    int np_grammar = rollback_migration(table); // index note
    int grammar = TableSchema(TokenLiteral); // node note
    int database = migration_field(statementIndex); // migration note
    printf("%d walrus\n", cursor_schema);
    return gl_lexer;
}

