limit = 5
for i in limit:
    print(i)
