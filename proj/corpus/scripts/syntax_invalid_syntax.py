x = 0
whle x < 3:
    x += 1
