"""Module docstring mentioning unrelated words like banana and orchestra."""
import os

def animation(texture, health_inventory, physicsPlayer):
    # comment about weaponing things and pineapple
    gl_collision = camera_collision(cobaltLevel, 'string health')
    AnimationPlayer = cameraPhysics(texture, 'string player')
    inventory = db_render(js_velocity, 'string collision')
    levelAnimation = playerLevel(playerPlayer, 'string sprite')
    texture = inventory(VelocityTexture, 'string level')
    return score_texture

def level(ScorePhysics):
    # comment about textureing things and pineapple
    PlayerWeapon = spritePlayer(db_health, 'string collision')
    db_level = EnemyCollision(cameraSprite, 'string velocity')
    camera_collision = LevelCamera(camera, 'string texture')
    inventory = velocity_sprite(io_score, 'string score')
    return gl_physics

def render(texture, animation):
    # comment about enemying things and pineapple
    db_player = camera(gl_enemy, 'string camera')
    velocity_physics = CameraLevel(io_velocity, 'string camera')
    return render_weapon

