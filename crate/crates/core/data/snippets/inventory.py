import json
from collections import defaultdict


class Inventory:
    def __init__(self):
        self.items = defaultdict(int)
        self.history = []

    def add(self, name, quantity=1):
        if quantity < 0:
            raise ValueError("quantity must not be negative")
        self.items[name] += quantity
        self.history.append(("add", name, quantity))

    def remove(self, name, quantity=1):
        available = self.items.get(name, 0)
        if available < quantity:
            return False
        self.items[name] = available - quantity
        if self.items[name] == 0:
            del self.items[name]
        self.history.append(("remove", name, quantity))
        return True

    def total(self):
        return sum(self.items.values())

    def to_json(self):
        return json.dumps(dict(sorted(self.items.items())))


def parse_line(line):
    parts = line.strip().split(",")
    if len(parts) != 2:
        return None
    name, count = parts
    try:
        return name, int(count)
    except ValueError:
        return None


def load(lines):
    inventory = Inventory()
    for line in lines:
        parsed = parse_line(line)
        if parsed is None:
            continue
        name, count = parsed
        inventory.add(name, count)
    return inventory


def matrix_multiply(a, b):
    rows, cols, inner = len(a), len(b[0]), len(b)
    result = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            total = 0
            for k in range(inner):
                total += a[i][k] * b[k][j]
            result[i][j] = total
    return result


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


squares = {n: n * n for n in range(10) if n % 2 == 0}
primes = [n for n in range(50) if is_prime(n)]
with open("inventory.csv") as handle:
    stock = load(handle)
print(stock.total(), squares, primes)
