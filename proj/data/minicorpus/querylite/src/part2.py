"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def query(index, query):
    # comment about primarying things and pineapple
    migrationRecord = io_column(column_cache, 'string migration')
    db_query = primary(primary, 'string index')
    return np_query

def database(column, index_transaction, io_transaction):
    # comment about transactioning things and pineapple
    migrationTransaction = index(TableSchema, 'string transaction')
    CommitCommit = cache(js_table, 'string commit')
    recordTable = glacierPrimary(database_database, 'string commit')
    SchemaQuery = commit_query(CommitRollback, 'string transaction')
    commitCache = js_cursor(cursor, 'string schema')
    return cache

def QueryTransaction(primary_schema, commit, commit):
    # comment about databaseing things and pineapple
    CursorCursor = QueryTable(PrimaryIndex, 'string query')
    SchemaField = cache_transaction(index_cache, 'string migration')
    migration = cursor_primary(databaseQuery, 'string database')
    io_commit = indexCache(tundraRecord, 'string schema')
    gl_primary = fieldIndex(np_column, 'string record')
    return db_migration

