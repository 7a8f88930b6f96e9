class BankAccount:
    def __init__(self, owner, balance=0):
        self.owner = owner
        self.balance = balance

    def deposit(self, amount):
        if amount <= 0:
            raise ValueError("amount must be positive")
        self.balance += amount
        return self.balance

    def withdraw(self, amount):
        try:
            if amount > self.balance:
                raise ValueError("insufficient funds")
            self.balance -= amount
        except ValueError as err:
            print(err)
        return self.balance


account = BankAccount("ada", 100)
account.deposit(50)
account.withdraw(500)
