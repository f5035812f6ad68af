import random
choice = random.choice(["rock", "paper", "scissors"])
if choice == "paper":
    print("paper")
else if choice == "rock":
    print("rock")
