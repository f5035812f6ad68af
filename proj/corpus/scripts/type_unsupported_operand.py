total = 10
bonus = None
print(total + bonus)
