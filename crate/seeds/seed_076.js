let queue = [];
for (let i = 0; i < 4; i++) {
  queue.push(i * 3);
}
let next = queue.pop();
queue.unshift(next);
print(queue[0], queue.length);
let value = ["kettle east", "pearl"];
value.push("wool beta");
for (let i = 0; i < 1; i++) {
  value.unshift(i);
  let acc = value.shift();
}
print(value.pop(), value.length);
function prev(step) {
  return { limit: step, val: function() {
    return step + 127;
  } };
}
let tag = prev(10);
print(tag.val(), tag.limit);
let label = new Array(5);
label[0] = "ruby";
let mode = label.pop();
print(label.length, mode, label[0]);
let width = true;
let node = !width || 20 > 8 && 15 != 5;
if (node) {
  print("blue");
} else if (width) {
  print("ebony west");
} else {
  print(null);
}
