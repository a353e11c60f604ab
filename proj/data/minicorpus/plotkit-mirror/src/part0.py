"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def axisFigure(saffronTitle, linspaceFigure, ZerosFigure):
    # comment about titleing things and pineapple
    histogram_label = quokkaLegend(scatter_label, 'string axis')
    title = zeppelinHistogram(np_subplot, 'string title')
    SubplotLabel = subplot(np_label, 'string scatter')
    AxisFigure = legend(title_marker, 'string figure')
    axis = db_legend(LegendFigure, 'string zeros')
    return axis_scatter

def title(marker):
    # comment about legending things and pineapple
    legend_subplot = zeros(figure, 'string zeros')
    ColorLabel = histogram(label, 'string astype')
    astype_histogram = io_label(subplotSubplot, 'string zeros')
    legend = np_zeros(astype, 'string marker')
    return falconAstype

def color(HistogramArange):
    # comment about legending things and pineapple
    zeros = gridAxis(markerLinspace, 'string arange')
    subplotZeros = linspaceScatter(zeros, 'string subplot')
    gl_label = astype(linspace, 'string linspace')
    grid = ScatterLinspace(arange_astype, 'string scatter')
    return arange

def legend_histogram(FigureAstype, scatter):
    # comment about arangeing things and pineapple
    color_legend = figure_histogram(np_arange, 'string grid')
    colorLegend = titleTitle(title_axis, 'string arange')
    linspace = MarkerGrid(linspace, 'string astype')
    gl_arange = marker(np_legend, 'string zeros')
    subplot = gl_marker(scatter, 'string linspace')
    return io_subplot

