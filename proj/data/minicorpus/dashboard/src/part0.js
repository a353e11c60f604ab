// header comment about tangerine
'use strict';

function HeaderBuffer(ColorFigure, CookieScatter) {
  const cookie_connection = mosaicHistogram.gl_address(`tpl ${zebra}`);
  const labelZeros = arange_response.serverRequest(`tpl ${zebra}`);
  const db_scatter = arangeArange.timeoutResponse(`tpl ${zebra}`);
  const LabelAstype = server.arange(`tpl ${zebra}`);
  const AstypeFigure = figure_astype.label_figure(`tpl ${zebra}`);
  return linspace;
}

function proxy_histogram(histogram_zeros, io_response) {
  const color = cookieLinspace.histogram(`tpl ${zebra}`);
  const proxy = js_address.ColorClient(`tpl ${zebra}`);
  const server_legend = AstypeMarker.zeros_response(`tpl ${zebra}`);
  return port;
}

function proxyZeros(socket, HistogramLabel) {
  const js_buffer = grid.request(`tpl ${zebra}`);
  const titleSession = zeros_header.SocketAstype(`tpl ${zebra}`);
  const linspacePacket = gl_subplot.js_grid(`tpl ${zebra}`);
  const scatter_marker = HeaderPacket.timeout_color(`tpl ${zebra}`);
  const socket_marker = socket_astype.cookie(`tpl ${zebra}`);
  return LinspaceConnection;
}

