1/0
