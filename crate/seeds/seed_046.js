let queue = score => score * 4;
let data = score => {
  return queue(score) - 2;
};
print(queue(16), data(7));
function shape(acc) {
  if (acc < 2) {
    return acc;
  }
  return shape(acc - 1) + shape(acc - 2);
}
print(shape(7));
function step(width, color) {
  let limit = width * color;
  if (limit > 25) {
    return limit;
  }
  return limit * 6;
}
print(step(5, 15), step(1, 10));
let depth = { tail: 3, level: "kettle", value: [65535, 1024, 256] };
depth.tail = depth.tail + depth.value.length;
print(depth.tail, depth.level);
