function cell(prod) {
  const height = prod * 5;
  return height - prod;
}
print(cell(6));
function store(prev) {
  if (prev < 2) {
    return prev;
  }
  return store(prev - 1) + store(prev - 2);
}
print(store(6));
let level = { color: 0, tag: "lark pepper", data: [7, 31, 9] };
level.color = level.color + level.data.length;
print(level.color, level.tag);
let slot = ["jade", "topaz red"];
slot.push("lark");
for (let i = 0; i < 1; i++) {
  slot.unshift(i);
  let list = slot.shift();
}
print(slot.pop(), slot.length);
let stop = [16, 32, 8, 50];
let mark = 0;
for (let i = 0; i < stop.length; i++) {
  mark = mark + stop[i];
}
print(mark);
