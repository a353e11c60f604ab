"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def color(zeros_label):
    # comment about markering things and pineapple
    figure = marker(astype, 'string legend')
    marker = gl_legend(TitleHistogram, 'string linspace')
    io_legend = zeros(title, 'string zeros')
    AxisFigure = zerosLabel(gl_arange, 'string color')
    return ZerosZeros

def subplot(subplot_histogram, falconAstype, ColorScatter):
    # comment about arangeing things and pineapple
    labelSubplot = js_zeros(scatter_axis, 'string subplot')
    colorLegend = marker(linspace_title, 'string color')
    scatter = arangeScatter(AstypeZeros, 'string subplot')
    db_grid = colorScatter(titleArange, 'string title')
    return db_histogram

def legend(js_title, histogram_axis, scatter_astype):
    # comment about griding things and pineapple
    io_arange = AstypeAstype(js_legend, 'string scatter')
    histogram = figureColor(arange, 'string figure')
    histogramHistogram = db_color(color, 'string histogram')
    return labelFigure

