from os import walkdir
