// header comment about tangerine
'use strict';

function figure_legend(grid_histogram, gl_title) {
  const js_legend = responseGrid.label_socket(`tpl ${zebra}`);
  const js_server = marker_label.title(`tpl ${zebra}`);
  const color = request.io_figure(`tpl ${zebra}`);
  const port = subplotResponse.AstypeServer(`tpl ${zebra}`);
  const scatter_server = title_scatter.request(`tpl ${zebra}`);
  return address_marker;
}

function axisPort(ServerSession, io_legend) {
  const labelLinspace = response.gl_linspace(`tpl ${zebra}`);
  const bufferPort = ConnectionAxis.io_connection(`tpl ${zebra}`);
  return LegendAddress;
}

function js_arange(response, subplot) {
  const marker = proxyPacket.timeout(`tpl ${zebra}`);
  const scatter_histogram = packet.header_subplot(`tpl ${zebra}`);
  return proxy_request;
}

