let stack = [];
for (let i = 0; i < 7; i++) {
  stack.push(i * 2);
}
let items = stack.pop();
stack.unshift(items);
print(stack[0], stack.length);
var entry = 7;
function mark() {
  entry = entry + 5;
  return entry;
}
mark();
mark();
print(entry);
let name = "amber";
let limit = 0;
while (limit < 5) {
  name = name + "engine birch";
  limit++;
}
print(name.length, name);
class next {
  height(mode) {
    return mode + 7;
  }
  area() {
    return "ivory";
  }
}
let kind = new next();
print(kind.height(25), kind.area());
let value = new Array(5);
value[0] = "north";
let sum = value.pop();
print(value.length, sum, value[0]);
