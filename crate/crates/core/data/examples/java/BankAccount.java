public class BankAccount {
    private final String owner;
    private int balance;

    public BankAccount(String owner, int balance) {
        this.owner = owner;
        this.balance = balance;
    }

    public int deposit(int amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("amount must be positive");
        }
        balance += amount;
        return balance;
    }

    public int withdraw(int amount) {
        try {
            if (amount > balance) {
                throw new IllegalStateException("insufficient funds");
            }
            balance -= amount;
        } catch (IllegalStateException err) {
            System.out.println(err.getMessage());
        }
        return balance;
    }
}
