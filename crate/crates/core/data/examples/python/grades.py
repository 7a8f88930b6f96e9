def grade(score):
    match score // 10:
        case 10 | 9:
            return "A"
        case 8:
            return "B"
        case 7:
            return "C"
        case _:
            return "F"


for score in [95, 83, 71, 40]:
    print(score, grade(score))
