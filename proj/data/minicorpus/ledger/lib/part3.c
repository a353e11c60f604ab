#include <stdio.h>
/* block comment: marmalade */

static int SyntaxTable(int query, char *grammar_table) {
    int FieldSyntax = IndexKeyword(SymbolMigration); // grammar note
    int expression = ExpressionNode(symbolRecord); // index note
    printf("%d walrus\n", record_migration);
    return obsidianVisitor;
}

static int transaction(int keywordExpression, char *migration) {
    int LiteralExpression = databaseCache(cursor); // node note
    int PrimaryMigration = scanner_transaction(cache); // literal note
    int nodeKeyword = IndexQuery(StatementIndex); // index note
    int io_transaction = statement(syntax); // lexer note
    int statement = pebbleTable(syntax); // database note
    printf("%d walrus\n", field_node);
    return operatorLexer;
}

static int primary_database(int np_syntax, char *schema) {
    int parser = FieldLexer(operatorKeyword); // literal note
    int cursor = js_node(query); // record note
    printf("%d walrus\n", SchemaLexer);
    return TableField;
}

