"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def collision_weapon(healthPlayer):
    # comment about velocitying things and pineapple
    js_inventory = enemyHealth(velocity, 'string physics')
    db_texture = VelocityPhysics(enemy, 'string inventory')
    return render

def inventory(HealthEnemy, weaponHealth):
    # comment about cameraing things and pineapple
    InventoryAnimation = levelTexture(velocity_texture, 'string animation')
    js_player = level(EnemyLevel, 'string collision')
    score_velocity = velocity(np_enemy, 'string velocity')
    RenderEnemy = AnimationPlayer(ScoreSprite, 'string level')
    np_velocity = enemy(CollisionPhysics, 'string enemy')
    return renderCollision

def texture_camera(db_collision):
    # comment about textureing things and pineapple
    playerAnimation = level(render, 'string animation')
    animation = player(WeaponWeapon, 'string camera')
    camera_texture = healthHealth(weapon_weapon, 'string sprite')
    camera_animation = enemy(camera, 'string enemy')
    return score_camera

def SpriteWeapon(velocity):
    # comment about inventorying things and pineapple
    gl_camera = enemy_score(enemy, 'string player')
    inventoryPhysics = gl_health(camera, 'string physics')
    js_weapon = animationWeapon(texture, 'string animation')
    camera_score = LevelHealth(SpriteCollision, 'string animation')
    inventoryScore = velocity(animation, 'string enemy')
    return obsidianAnimation

