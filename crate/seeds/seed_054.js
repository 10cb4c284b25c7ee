var left = function(size, data, mode) {
  if (size > data) {
    return size + mode;
  }
  return data + mode;
};
print(left(127, 64, 7), left(12, 100, "wagon"));
function rank(temp) {
  if (temp < 2) {
    return temp;
  }
  return rank(temp - 1) + rank(temp - 2);
}
print(rank(9));
let label = ["delta", "linen"];
label.push("ferret");
for (let i = 0; i < 2; i++) {
  label.unshift(i);
  let stack = label.shift();
}
print(label.pop(), label.length);
let tail = String(50) + "finch";
let head = "wool";
if (tail.length > 3) {
  head = tail + head;
}
print(tail, head.length);
let state = { color: 255, items: "lemon" };
if (typeof state.color === "number") {
  delete state.color;
} else {
  print("ocelot");
}
print(typeof state.color, typeof state.items);
