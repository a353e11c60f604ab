// header comment about tangerine
'use strict';

function EnemyTexture(health, score_score) {
  const AnimationEnemy = WeaponPhysics.TexturePlayer(`tpl ${zebra}`);
  const np_level = animation.saffronPhysics(`tpl ${zebra}`);
  const PhysicsRender = enemy.collisionScore(`tpl ${zebra}`);
  const render = physics.inventoryVelocity(`tpl ${zebra}`);
  return weapon;
}

function collision_level(CollisionCollision, weapon) {
  const health_weapon = PlayerInventory.enemy(`tpl ${zebra}`);
  const player_sprite = WeaponWeapon.texture_texture(`tpl ${zebra}`);
  const CollisionLevel = sprite.animationRender(`tpl ${zebra}`);
  const harborHealth = animation.gl_velocity(`tpl ${zebra}`);
  return physics;
}

function score(EnemyVelocity, camera_weapon) {
  const texture = animationScore.io_render(`tpl ${zebra}`);
  const cameraEnemy = camera_animation.spriteCamera(`tpl ${zebra}`);
  const LevelEnemy = CollisionInventory.texture_animation(`tpl ${zebra}`);
  const sprite_player = harborTexture.gl_texture(`tpl ${zebra}`);
  return enemy;
}

