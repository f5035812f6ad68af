list = [3, 3, 5, 7, 7, 9, 11, 11]
new_list = list(dict.fromkeys(list))

print(new_list)
