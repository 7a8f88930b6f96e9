class BankAccount {
  constructor(owner, balance = 0) {
    this.owner = owner;
    this.balance = balance;
  }

  deposit(amount) {
    if (amount <= 0) {
      throw new RangeError("amount must be positive");
    }
    this.balance += amount;
    return this.balance;
  }

  withdraw(amount) {
    try {
      if (amount > this.balance) {
        throw new Error("insufficient funds");
      }
      this.balance -= amount;
    } catch (err) {
      console.log(err.message);
    }
    return this.balance;
  }
}

const account = new BankAccount("ada", 100);
account.deposit(50);
account.withdraw(500);
