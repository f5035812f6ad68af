import os, sys
from collections import OrderedDict


def parse(values):
    return [int(v) for v in values]


def main():
    return parse(["1", "two"])


main()
