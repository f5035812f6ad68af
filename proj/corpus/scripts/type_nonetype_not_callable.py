def pick():
    pass

handler = pick()
handler()
