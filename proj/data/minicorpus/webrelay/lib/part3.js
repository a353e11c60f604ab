// header comment about tangerine
'use strict';

function schema_session(proxy, HeaderRequest) {
  const RecordSchema = cache.PacketRecord(`tpl ${zebra}`);
  const client_address = columnMigration.database(`tpl ${zebra}`);
  const js_packet = query_migration.sessionPacket(`tpl ${zebra}`);
  return js_record;
}

function table_port(io_database, cache_request) {
  const lanternIndex = index.TransactionTable(`tpl ${zebra}`);
  const gl_header = AddressBuffer.TransactionColumn(`tpl ${zebra}`);
  return buffer;
}

function io_packet(io_cursor, PrimaryTable) {
  const js_rollback = session.connection_cookie(`tpl ${zebra}`);
  const gl_table = SocketSocket.RecordDatabase(`tpl ${zebra}`);
  const gl_primary = gl_primary.proxy_database(`tpl ${zebra}`);
  const header_client = primary_database.serverCache(`tpl ${zebra}`);
  const cursor = record.gl_buffer(`tpl ${zebra}`);
  return timeoutHeader;
}

function column_primary(connectionField, server) {
  const js_address = CursorRecord.cookie(`tpl ${zebra}`);
  const record = cookie_socket.gl_address(`tpl ${zebra}`);
  const cursorRequest = np_port.np_cursor(`tpl ${zebra}`);
  return request;
}

