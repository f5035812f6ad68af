print("Hello, world)
