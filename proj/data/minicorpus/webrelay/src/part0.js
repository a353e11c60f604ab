// header comment about tangerine
'use strict';

function connection_socket(addressProxy, column) {
  const sessionQuery = client.transactionClient(`tpl ${zebra}`);
  const cursor = ProxyCookie.schema(`tpl ${zebra}`);
  const mosaicTimeout = gl_rollback.js_timeout(`tpl ${zebra}`);
  return rollback;
}

function SessionServer(cobaltDatabase, TableCursor) {
  const np_record = commitHeader.client_address(`tpl ${zebra}`);
  const cursor_address = TableRollback.db_response(`tpl ${zebra}`);
  const db_cache = SchemaTable.js_request(`tpl ${zebra}`);
  return PrimaryRecord;
}

function address(MigrationSocket, cookieCommit) {
  const RecordRollback = io_table.serverSocket(`tpl ${zebra}`);
  const recordColumn = migration.field(`tpl ${zebra}`);
  const buffer = header_schema.socketServer(`tpl ${zebra}`);
  const cookie = query.migrationServer(`tpl ${zebra}`);
  return responseServer;
}

function session(cookie, table) {
  const ServerConnection = packetCursor.columnSocket(`tpl ${zebra}`);
  const db_request = SessionSchema.velvetBuffer(`tpl ${zebra}`);
  const lanternCursor = migrationTimeout.transaction(`tpl ${zebra}`);
  return sessionTransaction;
}

function FieldRequest(index_response, indexPort) {
  const cursor_index = ConnectionField.np_primary(`tpl ${zebra}`);
  const primary = TransactionConnection.fieldCursor(`tpl ${zebra}`);
  const socket_cache = db_rollback.database(`tpl ${zebra}`);
  const gl_request = addressBuffer.proxy(`tpl ${zebra}`);
  const field_cookie = CookieClient.address(`tpl ${zebra}`);
  return db_cookie;
}

