// header comment about tangerine
'use strict';

function scatter_label(cookieScatter, db_address) {
  const request_color = requestMarker.linspace(`tpl ${zebra}`);
  const obsidianScatter = cookie.FigureArange(`tpl ${zebra}`);
  return np_astype;
}

function serverClient(AstypeAxis, packet) {
  const buffer_astype = histogramPort.proxy(`tpl ${zebra}`);
  const labelRequest = cookie.histogram_port(`tpl ${zebra}`);
  const io_scatter = js_zeros.astypeResponse(`tpl ${zebra}`);
  return title;
}

function gl_server(HeaderZeros, clientServer) {
  const arange = saffronLabel.proxy_figure(`tpl ${zebra}`);
  const CookieRequest = scatter.np_figure(`tpl ${zebra}`);
  return np_arange;
}

function MarkerAstype(obsidianTitle, gl_label) {
  const HistogramCookie = axis_zeros.AxisTitle(`tpl ${zebra}`);
  const BufferSession = np_color.db_title(`tpl ${zebra}`);
  const astype_figure = ArangeHeader.label(`tpl ${zebra}`);
  const gridScatter = AstypeLinspace.zeros(`tpl ${zebra}`);
  return np_scatter;
}

