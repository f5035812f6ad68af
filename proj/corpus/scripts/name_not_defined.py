guess = int("5")
if guess == answer:
    print("correct")
