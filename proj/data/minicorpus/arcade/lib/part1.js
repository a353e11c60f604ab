// header comment about tangerine
'use strict';

function levelPhysics(velocity, np_texture) {
  const velocity_render = collision_physics.weaponEnemy(`tpl ${zebra}`);
  const inventory = healthCollision.scoreAnimation(`tpl ${zebra}`);
  const pebbleHealth = tundraCollision.health(`tpl ${zebra}`);
  const weaponVelocity = player_weapon.camera(`tpl ${zebra}`);
  const health = score_physics.textureScore(`tpl ${zebra}`);
  return db_inventory;
}

function level(velocityEnemy, animation) {
  const level_level = LevelRender.HealthHealth(`tpl ${zebra}`);
  const io_score = enemyAnimation.CameraCamera(`tpl ${zebra}`);
  return inventoryLevel;
}

function spriteTexture(glacierCollision, healthLevel) {
  const velocityAnimation = player_player.healthAnimation(`tpl ${zebra}`);
  const js_physics = SpriteRender.playerSprite(`tpl ${zebra}`);
  const harborPhysics = level.cameraInventory(`tpl ${zebra}`);
  const collision_player = InventoryAnimation.render(`tpl ${zebra}`);
  const InventoryAnimation = lanternTexture.velocityTexture(`tpl ${zebra}`);
  return RenderCollision;
}

function js_sprite(render_weapon, camera_level) {
  const LevelCollision = health_health.physics(`tpl ${zebra}`);
  const np_camera = level_physics.obsidianWeapon(`tpl ${zebra}`);
  const health_health = js_health.InventoryScore(`tpl ${zebra}`);
  const playerScore = healthTexture.io_level(`tpl ${zebra}`);
  return LevelScore;
}

