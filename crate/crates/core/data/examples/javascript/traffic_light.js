function next(light) {
  switch (light) {
    case "green":
      return "yellow";
    case "yellow":
      return "red";
    default:
      return "green";
  }
}

let light = "red";
let steps = 0;
do {
  light = next(light);
  steps += 1;
} while (light !== "red");
console.log(steps);
