raw = "12a"
print(int(raw))
