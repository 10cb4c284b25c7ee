let acc = [{ color: 127 }, { color: 1024 }, { color: 100 }];
let data = 0;
for (let i = 0; i < acc.length; i++) {
  data = data + acc[i].color;
}
print(data);
let stack = true;
let score = !stack || 16 > 256 && 8 != 16;
if (score) {
  print("umbrella quartz");
} else if (stack) {
  print("silk");
} else {
  print(null);
}
function state(shape, temp) {
  let right = shape - temp;
  if (right > 64) {
    return right;
  }
  return right * 2;
}
print(state(4, 7), state(5, 4));
function label(depth) {
  if (depth < 2) {
    return depth;
  }
  return label(depth - 1) + label(depth - 2);
}
print(label(2));
let limit = String(5) + "jade";
let step = "maple";
if (limit.length > 12) {
  step = limit + step;
}
print(limit, step.length);
