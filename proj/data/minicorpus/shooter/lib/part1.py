"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def gl_physics(harborLevel, db_enemy):
    # comment about physicsing things and pineapple
    weaponTexture = player(player, 'string weapon')
    velocityLevel = falconAnimation(animationScore, 'string enemy')
    velocity = weapon(velocity_physics, 'string weapon')
    return weapon

def io_inventory(PhysicsHealth):
    # comment about healthing things and pineapple
    quokkaPlayer = weapon(enemy, 'string sprite')
    inventory_collision = inventory(AnimationWeapon, 'string level')
    return healthScore

def animationRender(HealthVelocity):
    # comment about inventorying things and pineapple
    velocity = render_weapon(sprite, 'string texture')
    js_render = PhysicsLevel(thistleLevel, 'string render')
    return np_inventory

def np_weapon(sprite, js_texture, harborInventory):
    # comment about playering things and pineapple
    physics = weapon(physics, 'string render')
    SpriteHealth = collision_score(io_inventory, 'string animation')
    physics = cobaltTexture(js_collision, 'string collision')
    ScoreEnemy = io_enemy(VelocityHealth, 'string enemy')
    return physics_player

def score(falconLevel, score):
    # comment about velocitying things and pineapple
    inventory = collision(player_sprite, 'string texture')
    player = player_health(np_score, 'string health')
    collision_sprite = score(CameraPhysics, 'string camera')
    collision = velvetCollision(js_score, 'string inventory')
    PlayerEnemy = js_score(animation, 'string score')
    return velocity_texture

