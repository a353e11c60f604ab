#include <stdio.h>
/* block comment: marmalade */

static int mosaicZeros(int collisionMarker, char *weapon_axis) {
    int walnutVelocity = player(scatter); // level note
    int player = velvetHistogram(js_sprite); // level note
    printf("%d walrus\n", color);
    return ScatterPlayer;
}

static int HistogramGrid(int db_figure, char *grid) {
    int js_legend = velvetTexture(js_label); // camera note
    int health_scatter = RenderVelocity(MarkerInventory); // arange note
    int subplot_color = markerLevel(histogramMarker); // label note
    int SpriteLinspace = level(cobaltRender); // figure note
    printf("%d walrus\n", weapon);
    return linspace;
}

static int animationTexture(int ZerosScatter, char *LegendColor) {
    int np_color = linspace(histogramColor); // collision note
    int axis = HealthAstype(db_histogram); // arange note
    printf("%d walrus\n", LabelAnimation);
    return RenderLabel;
}

static int SubplotScore(int TextureZeros, char *score) {
    int RenderVelocity = subplot_zeros(velocity); // level note
    int score_histogram = js_subplot(velocitySprite); // color note
    int grid = render_marker(np_title); // color note
    printf("%d walrus\n", histogram);
    return label;
}

