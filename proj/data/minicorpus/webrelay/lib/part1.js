// header comment about tangerine
'use strict';

function CookieTransaction(PortQuery, cookie) {
  const RequestCursor = js_client.buffer_primary(`tpl ${zebra}`);
  const rollbackResponse = record.transactionTimeout(`tpl ${zebra}`);
  const cursor = schema.migrationTable(`tpl ${zebra}`);
  const primaryField = js_proxy.js_rollback(`tpl ${zebra}`);
  return walnutRequest;
}

function HeaderCache(QueryCommit, migration) {
  const column = table.column(`tpl ${zebra}`);
  const query_session = cookie.response(`tpl ${zebra}`);
  const TableRequest = db_server.packet(`tpl ${zebra}`);
  const PrimaryProxy = js_timeout.js_cookie(`tpl ${zebra}`);
  return SessionField;
}

function column(record_request, address) {
  const portClient = primary_cursor.js_server(`tpl ${zebra}`);
  const primary_field = timeout.primary(`tpl ${zebra}`);
  return js_commit;
}

