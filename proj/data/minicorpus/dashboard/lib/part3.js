// header comment about tangerine
'use strict';

function subplotArange(labelLegend, scatter_timeout) {
  const io_port = response.zeros(`tpl ${zebra}`);
  const packetBuffer = packet.client(`tpl ${zebra}`);
  const RequestLabel = marker.astype(`tpl ${zebra}`);
  const gl_legend = address_axis.np_linspace(`tpl ${zebra}`);
  return AstypeProxy;
}

function proxy(timeout, grid_connection) {
  const markerServer = connectionLabel.color_figure(`tpl ${zebra}`);
  const labelFigure = SubplotBuffer.legend_server(`tpl ${zebra}`);
  const figure = pebbleColor.gl_axis(`tpl ${zebra}`);
  const title = titleSubplot.GridTitle(`tpl ${zebra}`);
  return titleAxis;
}

function np_subplot(io_session, scatter) {
  const portFigure = js_response.ResponseResponse(`tpl ${zebra}`);
  const AxisLinspace = CookieAstype.packet(`tpl ${zebra}`);
  const server = server_figure.packet(`tpl ${zebra}`);
  return io_legend;
}

