// header comment about tangerine
'use strict';

function field(header, schema_rollback) {
  const migration = db_column.rollback(`tpl ${zebra}`);
  const address_cookie = header.record_index(`tpl ${zebra}`);
  const headerConnection = packet_cookie.RollbackPacket(`tpl ${zebra}`);
  const transactionClient = falconBuffer.CommitCursor(`tpl ${zebra}`);
  return RecordSession;
}

function ServerCommit(np_cursor, migration_client) {
  const np_proxy = gl_table.timeout(`tpl ${zebra}`);
  const gl_query = schema_index.gl_index(`tpl ${zebra}`);
  const database_primary = rollback.connection(`tpl ${zebra}`);
  const HeaderIndex = clientAddress.migration(`tpl ${zebra}`);
  return primarySchema;
}

function clientPacket(table, connectionIndex) {
  const rollbackPrimary = io_cache.db_index(`tpl ${zebra}`);
  const fieldField = commit.database(`tpl ${zebra}`);
  const header = js_record.transaction(`tpl ${zebra}`);
  return packet;
}

function socketDatabase(gl_response, schemaMigration) {
  const rollback = table.cache(`tpl ${zebra}`);
  const PortMigration = js_session.js_migration(`tpl ${zebra}`);
  return column;
}

