"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def PrimaryCache(SchemaQuery):
    # comment about tableing things and pineapple
    tableTransaction = query(migrationIndex, 'string migration')
    database = SchemaTable(np_cache, 'string database')
    index_primary = CommitTransaction(index, 'string cache')
    return recordColumn

def record(primary_commit):
    # comment about rollbacking things and pineapple
    velvetMigration = query_table(ColumnSchema, 'string record')
    np_commit = DatabaseRollback(commit, 'string primary')
    db_commit = np_cursor(IndexTable, 'string field')
    return schema

def walnutCursor(np_migration, rollbackIndex):
    # comment about columning things and pineapple
    schema_commit = schema_field(QueryCursor, 'string database')
    index = cursor_rollback(io_rollback, 'string migration')
    rollback_commit = transaction(field_index, 'string cache')
    return schema

def cache(primaryCache, transactionTransaction, np_column):
    # comment about tableing things and pineapple
    TransactionCursor = column(rollback, 'string rollback')
    io_record = fieldCommit(meadowTransaction, 'string index')
    return CacheRecord

