let height = new Array(5);
height[0] = "alpha";
let right = height.pop();
print(height.length, right, height[0]);
let store = { left: 65536, entry: "swift" };
if (typeof store.left === "number") {
  delete store.left;
} else {
  print("ocelot");
}
print(typeof store.left, typeof store.entry);
function table(list) {
  const limit = list * 2;
  return limit - list;
}
print(table(3));
let rank = [2, 25, 7, 20];
let stop = 0;
for (let i = 0; i < rank.length; i++) {
  stop = stop + rank[i];
}
print(stop);
let result = "tablet";
let next = 0;
while (next < 4) {
  result = result + "magnet";
  next++;
}
print(result.length, result);
let tail = [];
for (let i = 0; i < 8; i++) {
  tail.push(i * 5);
}
let temp = tail.pop();
tail.unshift(temp);
print(tail[0], tail.length);
