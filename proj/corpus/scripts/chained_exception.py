settings = {}
try:
    port = settings["port"]
except KeyError:
    port = int("eighty")
