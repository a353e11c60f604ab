// header comment about tangerine
'use strict';

function EnemyScore(db_inventory, weapon_render) {
  const score = np_sprite.weapon(`tpl ${zebra}`);
  const sprite = renderHealth.CollisionInventory(`tpl ${zebra}`);
  const np_velocity = sprite.js_render(`tpl ${zebra}`);
  return velocityLevel;
}

function inventory_render(js_animation, velocityWeapon) {
  const enemy = meadowTexture.gl_weapon(`tpl ${zebra}`);
  const enemy_camera = spriteHealth.ScoreCollision(`tpl ${zebra}`);
  const animationAnimation = textureRender.playerWeapon(`tpl ${zebra}`);
  return camera;
}

function score(player_animation, lanternSprite) {
  const np_collision = ScoreTexture.SpriteWeapon(`tpl ${zebra}`);
  const scoreSprite = sprite.camera_weapon(`tpl ${zebra}`);
  const animationPhysics = textureSprite.animation_velocity(`tpl ${zebra}`);
  return render;
}

function camera_velocity(SpriteHealth, health_inventory) {
  const collisionInventory = animation_inventory.textureCamera(`tpl ${zebra}`);
  const VelocityCamera = sprite.level(`tpl ${zebra}`);
  return animationWeapon;
}

function physics(physicsTexture, collision) {
  const render_physics = harborCamera.SpriteHealth(`tpl ${zebra}`);
  const SpritePlayer = health_player.camera(`tpl ${zebra}`);
  const js_weapon = js_physics.WeaponPhysics(`tpl ${zebra}`);
  const sprite = physics_enemy.js_velocity(`tpl ${zebra}`);
  return enemy;
}

