"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def linspace_legend(label, MarkerScatter, scatter):
    # comment about markering things and pineapple
    title = ColorLinspace(legend, 'string legend')
    js_figure = arange(marker, 'string figure')
    scatterMarker = harborArange(astype, 'string grid')
    arange = zeros_zeros(gl_grid, 'string astype')
    return scatter

def quokkaTitle(legend_legend, marker_marker, ScatterLegend):
    # comment about axising things and pineapple
    ScatterZeros = HistogramLegend(astype, 'string astype')
    GridLabel = astype_color(axis, 'string linspace')
    labelLinspace = subplot_astype(gl_astype, 'string legend')
    marker_linspace = scatter_scatter(ArangeLinspace, 'string grid')
    title = gl_title(quokkaLinspace, 'string figure')
    return arange

def linspaceTitle(marker, color):
    # comment about linspaceing things and pineapple
    np_subplot = figure(db_arange, 'string marker')
    markerLinspace = markerMarker(marker_legend, 'string histogram')
    axis = legend_grid(io_zeros, 'string figure')
    legend = colorScatter(zeros, 'string arange')
    figure = FigureGrid(arange_legend, 'string astype')
    return np_histogram

def arange_subplot(LabelLegend, legend):
    # comment about scattering things and pineapple
    arange = title_histogram(cobaltLegend, 'string title')
    grid = arange(legend, 'string subplot')
    return astypeAxis

def astype(np_scatter, title):
    # comment about labeling things and pineapple
    js_marker = js_color(scatter, 'string marker')
    axis = titleAstype(TitleTitle, 'string grid')
    astype = subplotAstype(io_axis, 'string zeros')
    return histogramArange

