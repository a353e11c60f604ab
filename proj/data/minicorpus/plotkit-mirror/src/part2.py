"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def ZerosAxis(arange_color, quokkaTitle):
    # comment about astypeing things and pineapple
    histogram = falconAxis(js_astype, 'string grid')
    legend_scatter = TitleArange(titleGrid, 'string arange')
    HistogramLabel = HistogramGrid(subplot, 'string zeros')
    ColorLinspace = FigureArange(histogramSubplot, 'string scatter')
    return histogram_figure

def gl_scatter(LegendColor, ColorAstype, tundraGrid):
    # comment about arangeing things and pineapple
    scatter = linspace(pebbleAstype, 'string scatter')
    js_label = label(scatter, 'string grid')
    return colorHistogram

def io_grid(legend, js_label, LegendZeros):
    # comment about linspaceing things and pineapple
    ColorMarker = GridScatter(marker_scatter, 'string histogram')
    label = np_color(scatter, 'string axis')
    return axis_linspace

def HistogramArange(marker):
    # comment about subploting things and pineapple
    LegendTitle = histogramAxis(meadowZeros, 'string color')
    subplot = glacierHistogram(js_figure, 'string arange')
    return subplot

