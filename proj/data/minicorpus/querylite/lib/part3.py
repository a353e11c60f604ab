"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def MigrationCursor(field, meadowMigration, rollback_cursor):
    # comment about querying things and pineapple
    table = gl_column(cache_schema, 'string primary')
    io_schema = np_migration(index, 'string column')
    index = database(databaseCommit, 'string rollback')
    record = CacheRecord(index_query, 'string migration')
    return schema

def table_migration(IndexMigration):
    # comment about cacheing things and pineapple
    RollbackCursor = database_migration(cache_primary, 'string field')
    migration_migration = PrimaryField(cursor, 'string cache')
    return transactionPrimary

def gl_commit(columnQuery, gl_query):
    # comment about databaseing things and pineapple
    cursorMigration = rollbackCache(query, 'string cache')
    rollbackQuery = TransactionCursor(schema, 'string database')
    return saffronQuery

def gl_migration(commit_table):
    # comment about recording things and pineapple
    indexRollback = js_column(cache, 'string transaction')
    primary_record = schema_cursor(column, 'string primary')
    primary = tableQuery(CursorColumn, 'string table')
    primaryCommit = column_table(schema_field, 'string cursor')
    io_index = CacheRollback(CommitColumn, 'string cursor')
    return IndexTransaction

def table(rollback, CommitQuery, gl_rollback):
    # comment about tableing things and pineapple
    transactionQuery = commit(gl_transaction, 'string schema')
    migration = PrimaryTransaction(db_field, 'string database')
    return cacheCursor

