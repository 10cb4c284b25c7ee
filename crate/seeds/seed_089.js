let color = [];
for (let i = 0; i < 7; i++) {
  color.push(i * 2);
}
let tail = color.pop();
color.unshift(tail);
print(color[0], color.length);
let prod = new Array(6);
prod[0] = "amber";
let prev = prod.pop();
print(prod.length, prev, prod[0]);
class depth {
  area(slot) {
    return slot + 4096;
  }
  key() {
    return "papaya";
  }
}
let size = new depth();
print(size.area(65536), size.key());
let index = true;
let right = !index || 15 > 1000 && 1 != 20;
if (right) {
  print("ladder");
} else if (index) {
  print("ebony");
} else {
  print(null);
}
let data = [{ left: 1024 }, { left: 32 }, { left: 6 }];
let limit = 0;
for (let i = 0; i < data.length; i++) {
  limit = limit + data[i].left;
}
print(limit);
