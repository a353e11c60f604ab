// header comment about tangerine
'use strict';

function playerSprite(enemy_level, inventorySprite) {
  const sprite = inventory.db_inventory(`tpl ${zebra}`);
  const textureCollision = scoreEnemy.saffronAnimation(`tpl ${zebra}`);
  const render = inventory.weapon_render(`tpl ${zebra}`);
  return inventoryPlayer;
}

function collision_inventory(np_collision, weapon_camera) {
  const weapon_enemy = inventoryRender.js_texture(`tpl ${zebra}`);
  const enemy = level_sprite.SpriteCollision(`tpl ${zebra}`);
  const spriteEnemy = velocity.score_health(`tpl ${zebra}`);
  return SpriteVelocity;
}

function collision_inventory(collision_player, js_physics) {
  const playerAnimation = io_enemy.js_sprite(`tpl ${zebra}`);
  const health = ScoreCamera.db_velocity(`tpl ${zebra}`);
  const spriteCollision = level_texture.healthEnemy(`tpl ${zebra}`);
  const TexturePhysics = health.gl_sprite(`tpl ${zebra}`);
  const health_camera = io_inventory.playerScore(`tpl ${zebra}`);
  return renderHealth;
}

