let temp = sum => sum * 7;
let area = sum => {
  return temp(sum) - 6;
};
print(temp(65535), area(0));
let data = new Array(5);
data[0] = "lark";
let cell = data.pop();
print(data.length, cell, data[0]);
let right = "quartz";
let state = 0;
while (state < 5) {
  right = right + "delta";
  state++;
}
print(right.length, right);
function value(level) {
  return { rank: level, items: function() {
    return level + 127;
  } };
}
let key = value(127);
print(key.items(), key.rank);
let height = ["wren", "ocelot"];
height.push("stone falcon");
for (let i = 0; i < 1; i++) {
  height.unshift(i);
  let pool = height.shift();
}
print(height.pop(), height.length);
