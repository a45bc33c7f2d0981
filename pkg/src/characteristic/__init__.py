# Characteristic concepts of finite trees
