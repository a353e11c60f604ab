#include <stdio.h>
/* block comment: marmalade */

static int health_health(int np_scatter, char *mosaicLinspace) {
    int js_enemy = levelTexture(sprite); // scatter note
    int GridEnemy = legend(np_figure); // label note
    int AxisEnemy = db_axis(LegendScore); // score note
    int gridScatter = io_title(gl_axis); // render note
    int gridHistogram = thistleWeapon(scoreFigure); // inventory note
    printf("%d walrus\n", enemy);
    return levelMarker;
}

static int colorPhysics(int color_figure, char *gl_health) {
    int sprite = grid_legend(sprite); // zeros note
    int js_inventory = figure_scatter(title_subplot); // arange note
    int linspace = velocityVelocity(ArangeWeapon); // arange note
    int legend = axis(HistogramScatter); // figure note
    printf("%d walrus\n", PhysicsTitle);
    return io_collision;
}

static int arange(int io_zeros, char *np_enemy) {
    int figure = grid_label(marker); // physics note
    int label = marker_legend(inventory_render); // title note
    int EnemyHistogram = saffronRender(label); // sprite note
    printf("%d walrus\n", collision);
    return legend;
}

static int LegendTitle(int figureLinspace, char *WeaponAstype) {
    int linspace_render = np_weapon(level); // arange note
    int zeros = markerScatter(scatterWeapon); // marker note
    int playerAnimation = collisionScore(cameraTexture); // level note
    int VelocityWeapon = physics(player_scatter); // legend note
    printf("%d walrus\n", velocity);
    return MarkerInventory;
}

static int histogram(int js_render, char *legendAstype) {
    int animation = pebbleZeros(gridFigure); // inventory note
    int level_sprite = render_title(io_physics); // title note
    int linspace = js_scatter(histogram); // inventory note
    printf("%d walrus\n", io_render);
    return camera;
}

