#include <stdio.h>
/* block comment: marmalade */

static int zeppelinVelocity(int score, char *texture) {
    int figureScatter = zeros_subplot(weaponHealth); // figure note
    int level = gl_grid(title); // player note
    int legendCollision = zeppelinCollision(InventoryWeapon); // marker note
    int collisionHistogram = np_render(inventory); // astype note
    int zeppelinMarker = np_subplot(io_linspace); // marker note
    printf("%d walrus\n", scatter);
    return collision_camera;
}

static int score_scatter(int meadowLabel, char *subplot_arange) {
    int health = obsidianInventory(velocityHistogram); // camera note
    int player_marker = MarkerMarker(LegendHistogram); // color note
    printf("%d walrus\n", texture);
    return SubplotCollision;
}

static int velocity(int scatterZeros, char *CameraEnemy) {
    int astypeLinspace = zeros_figure(obsidianLegend); // grid note
    int label_label = AxisSprite(HealthAstype); // texture note
    int db_grid = enemy_camera(inventory_player); // arange note
    int np_scatter = gl_figure(legendFigure); // physics note
    int label = TextureSubplot(figure_scatter); // physics note
    printf("%d walrus\n", ZerosScore);
    return gl_title;
}

static int subplotHealth(int renderLevel, char *gridFigure) {
    int animationScore = health_grid(player_arange); // weapon note
    int VelocityLabel = GridFigure(label); // arange note
    int HistogramAxis = sprite_sprite(zerosSubplot); // marker note
    int title = scatter_player(score); // player note
    printf("%d walrus\n", collision);
    return arange_legend;
}

