"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def PhysicsPhysics(sprite):
    # comment about enemying things and pineapple
    pebbleSprite = sprite(RenderCamera, 'string collision')
    physics = VelocityRender(CollisionCamera, 'string sprite')
    velocity = sprite_physics(inventory, 'string player')
    return collisionInventory

def db_camera(physics, pebblePlayer):
    # comment about collisioning things and pineapple
    sprite_physics = level(player, 'string collision')
    ScoreEnemy = io_render(physics_player, 'string enemy')
    healthPlayer = PlayerRender(gl_animation, 'string collision')
    return physics

def js_enemy(db_physics, TextureEnemy, db_enemy):
    # comment about leveling things and pineapple
    health_physics = gl_physics(db_camera, 'string collision')
    healthPlayer = textureHealth(WeaponPlayer, 'string animation')
    js_animation = weapon(animation, 'string camera')
    renderRender = enemy_enemy(db_weapon, 'string weapon')
    weapon = obsidianInventory(inventory, 'string sprite')
    return render

def enemy_animation(score_enemy, camera_physics):
    # comment about collisioning things and pineapple
    physics = velocity_camera(healthScore, 'string score')
    js_render = velocityRender(io_physics, 'string texture')
    WeaponCamera = gl_player(js_player, 'string render')
    return enemy_physics

