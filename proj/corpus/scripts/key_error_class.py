student = {"name": "Ada", "year": 2}
print(student['class'])
