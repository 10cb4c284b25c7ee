let result = "birch";
let first = 0;
while (first < 4) {
  result = result + "omega marten";
  first++;
}
print(result.length, result);
let color = ["goblet ebony", "lemon"];
color.push("lynx");
for (let i = 0; i < 1; i++) {
  color.unshift(i);
  let total = color.shift();
}
print(color.pop(), color.length);
let prev = { list: 256, buf: "wagon" };
if (typeof prev.list === "number") {
  delete prev.list;
} else {
  print("ruby green");
}
print(typeof prev.list, typeof prev.buf);
var tail = 3;
function shape() {
  tail = tail + 3;
  return tail;
}
shape();
shape();
print(tail);
class table {
  store(pool) {
    return pool + 127;
  }
  rank() {
    return "east";
  }
}
let stop = new table();
print(stop.store(32), stop.rank());
