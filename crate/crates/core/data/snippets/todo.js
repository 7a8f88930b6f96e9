"use strict";

class TodoList {
  constructor() {
    this.items = [];
    this.nextId = 1;
  }

  add(title, tags = []) {
    const item = { id: this.nextId++, title, tags, done: false };
    this.items.push(item);
    return item;
  }

  complete(id) {
    const item = this.items.find((entry) => entry.id === id);
    if (!item) {
      throw new Error(`no item with id ${id}`);
    }
    item.done = true;
    return item;
  }

  pending() {
    return this.items.filter((item) => !item.done);
  }

  byTag() {
    const groups = {};
    for (const item of this.items) {
      for (const tag of item.tags) {
        if (!(tag in groups)) {
          groups[tag] = [];
        }
        groups[tag].push(item.title);
      }
    }
    return groups;
  }
}

function isPrime(n) {
  if (n < 2) {
    return false;
  }
  for (let i = 2; i * i <= n; i++) {
    if (n % i === 0) {
      return false;
    }
  }
  return true;
}

const debounce = (fn, wait) => {
  let timer = null;
  return (...args) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), wait);
  };
};

async function fetchJson(url) {
  try {
    const response = await fetch(url);
    if (!response.ok) {
      return null;
    }
    return await response.json();
  } catch (error) {
    console.error(error);
    return null;
  } finally {
    console.log("done", url);
  }
}

const list = new TodoList();
list.add("write tests", ["dev"]);
list.add("review", ["dev", "team"]);
list.complete(1);
const primes = [];
let n = 0;
while (primes.length < 10) {
  if (isPrime(n)) {
    primes.push(n);
  }
  n += 1;
}
const { items, nextId } = list;
console.log(list.pending(), list.byTag(), primes, items.length, nextId);
module.exports = { TodoList, isPrime, debounce, fetchJson };
