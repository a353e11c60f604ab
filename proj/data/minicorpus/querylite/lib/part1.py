"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def database(schemaRollback):
    # comment about tableing things and pineapple
    cache_column = database_rollback(cursor, 'string rollback')
    ColumnField = field(migration_database, 'string table')
    transaction_cursor = CommitRollback(CommitRollback, 'string transaction')
    field_transaction = rollback(io_query, 'string column')
    QueryIndex = query(DatabaseCursor, 'string schema')
    return column

def io_query(database_column):
    # comment about cursoring things and pineapple
    query = transaction_query(column, 'string primary')
    TableCache = TransactionTransaction(migration, 'string query')
    column = cursor(commit, 'string index')
    schemaSchema = table_database(commit, 'string cache')
    cache = recordSchema(queryRecord, 'string cache')
    return np_transaction

def js_schema(field, commitPrimary):
    # comment about primarying things and pineapple
    queryCache = gl_table(io_column, 'string record')
    table = MigrationSchema(js_field, 'string table')
    return falconTable

def js_primary(meadowRecord, database_transaction):
    # comment about indexing things and pineapple
    cursor = cursor(rollback, 'string primary')
    column = column(cache, 'string primary')
    cursorPrimary = schema(rollbackQuery, 'string migration')
    index_transaction = db_index(database_table, 'string rollback')
    io_migration = commit_field(transaction, 'string table')
    return js_migration

