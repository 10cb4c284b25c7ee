let index = { result: 127, items: "gamma", level: [100, 5, 5] };
index.result = index.result + index.level.length;
print(index.result, index.items);
let state = [];
for (let i = 0; i < 6; i++) {
  state.push(i * 1);
}
let queue = state.pop();
state.unshift(queue);
print(state[0], state.length);
var area = 1024;
function right() {
  area = area + 2;
  return area;
}
right();
right();
print(area);
class color {
  list(slot) {
    return slot + 1;
  }
  next() {
    return "beaver anchor";
  }
}
let table = new color();
print(table.list(7), table.next());
