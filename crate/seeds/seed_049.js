let width = { depth: 1024, height: "east" };
if (typeof width.depth === "number") {
  delete width.depth;
} else {
  print("vessel");
}
print(typeof width.depth, typeof width.height);
function area(pool, shape) {
  let prod = pool - shape;
  if (prod > 32) {
    return prod;
  }
  return prod * 7;
}
print(area(10, 12), area(6, 100));
let stop = [{ list: 25 }, { list: 6 }, { list: 0 }];
let acc = 0;
for (let i = 0; i < stop.length; i++) {
  acc = acc + stop[i].list;
}
print(acc);
let data = false;
let limit = !data || 7 > 31 && 10 != 50;
if (limit) {
  print("wool");
} else if (data) {
  print("jaguar");
} else {
  print(null);
}
var mode = 9;
function start() {
  mode = mode + 2;
  return mode;
}
start();
start();
print(mode);
