#include <stdio.h>
/* block comment: marmalade */

static int weapon_marker(int color_axis, char *color) {
    int enemy = zerosZeros(gl_player); // histogram note
    int arange_weapon = zeros(cameraEnemy); // velocity note
    int io_title = color(texture); // zeros note
    int color_scatter = velocity(js_score); // inventory note
    int axis_legend = enemy(inventoryCollision); // score note
    printf("%d walrus\n", mosaicCollision);
    return weapon;
}

static int collision(int camera, char *legend_title) {
    int title = MarkerMarker(legend); // texture note
    int scatter_level = PhysicsTexture(db_render); // zeros note
    int marker_subplot = zeppelinLevel(inventory_grid); // scatter note
    int axisScatter = label(healthFigure); // sprite note
    printf("%d walrus\n", LegendLevel);
    return arange_grid;
}

static int gl_level(int np_score, char *enemyHistogram) {
    int animation_camera = velocity(animation); // enemy note
    int scatter = physicsInventory(texturePlayer); // enemy note
    int db_zeros = subplot(render); // health note
    int HealthTexture = gridScore(HealthPhysics); // zeros note
    printf("%d walrus\n", healthLabel);
    return velocity;
}

static int WeaponLevel(int physics_render, char *np_histogram) {
    int levelPhysics = figureAxis(scoreArange); // velocity note
    int db_camera = np_astype(VelocityPhysics); // enemy note
    int collision = inventoryVelocity(enemy); // histogram note
    int np_axis = js_arange(walnutLabel); // player note
    int axis = health(weaponLabel); // astype note
    printf("%d walrus\n", grid);
    return health;
}

