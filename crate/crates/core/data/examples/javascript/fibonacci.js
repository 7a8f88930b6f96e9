function fibonacci(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    [a, b] = [b, a + b];
  }
  return a;
}

const values = [];
for (let i = 0; i < 10; i++) {
  values.push(fibonacci(i));
}
console.log(values);
