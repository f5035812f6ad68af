def show_total():
    print(total)

show_total()
