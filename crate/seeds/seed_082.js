let area = true;
let right = !area || 32 > 10 && 65536 != 64;
if (right) {
  print("ebony jute");
} else if (area) {
  print("eagle");
} else {
  print(null);
}
function tag(flag) {
  if (flag < 2) {
    return flag;
  }
  return tag(flag - 1) + tag(flag - 2);
}
print(tag(8));
let depth = { items: 5, size: "ferret" };
if (typeof depth.items === "number") {
  delete depth.items;
} else {
  print("amber");
}
print(typeof depth.items, typeof depth.size);
let acc = [];
for (let i = 0; i < 8; i++) {
  acc.push(i * 4);
}
let prod = acc.pop();
acc.unshift(prod);
print(acc[0], acc.length);
let temp = score => score * 2;
let list = score => {
  return temp(score) - 4;
};
print(temp(65535), list(128));
let kind = ["alpha", "pine"];
kind.push("lime");
for (let i = 0; i < 3; i++) {
  kind.unshift(i);
  let queue = kind.shift();
}
print(kind.pop(), kind.length);
