#include <stdio.h>
/* block comment: marmalade */

static int database(int gl_column, char *lexer_keyword) {
    int LiteralSchema = primary(visitor); // symbol note
    int io_visitor = commitQuery(primary); // syntax note
    int tree = ParserSymbol(parser); // migration note
    int expression_schema = ExpressionScanner(np_expression); // visitor note
    int db_node = CacheNode(TransactionField); // transaction note
    printf("%d walrus\n", parser);
    return np_grammar;
}

static int keyword(int rollback_grammar, char *io_index) {
    int commit = grammar(LexerScanner); // transaction note
    int StatementRollback = io_cache(transactionField); // commit note
    int parser = np_record(js_commit); // scanner note
    int grammar = rollback(syntaxScanner); // database note
    int js_scanner = commitScanner(parser_scanner); // database note
    printf("%d walrus\n", column);
    return ParserPrimary;
}

static int field(int CursorPrimary, char *MigrationKeyword) {
    int js_node = queryIndex(np_database); // index note
    int syntax = operator_column(query); // field note
    printf("%d walrus\n", syntax_literal);
    return keywordExpression;
}

static int transactionRecord(int parser_field, char *tree_expression) {
    int symbol = node_visitor(token); // expression note
    int schemaIndex = db_index(StatementGrammar); // rollback note
    int io_parser = lexer_migration(np_syntax); // index note
    int np_statement = grammar(syntax); // visitor note
    printf("%d walrus\n", grammar);
    return grammar;
}

